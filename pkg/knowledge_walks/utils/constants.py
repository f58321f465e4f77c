DEFAULT_MAX_ACTIVE_SWEEPS = 2
MAX_NETWORK_NAME_LENGTH = 100
MAX_MODEL_KIND_LENGTH = 10
MAX_SWEEP_STATUS_LENGTH = 20
CONFIG_HASH_LENGTH = 64

# Параметры динамики по умолчанию
DEFAULT_ALPHA = 2.0
DEFAULT_GAMMA = 0.0
DEFAULT_TAU = 1.0
DEFAULT_ETA_COMMON = 1.0
DEFAULT_ETA_INFLUENTIAL = 10.0
DEFAULT_D_ETA = 0.1
DEFAULT_NUM_AGENTS = 100
DEFAULT_ITERATIONS = 1000

# Эксперименты
DEFAULT_REALIZATIONS = 300
DEFAULT_T_CUT = 1000
DEFAULT_ACCESSIBILITY_H = 3
DEFAULT_REGION_BINS = 10

UNREACHABLE = -1
UNDISCOVERED = -1

EDGE_LIST_SUFFIX = ".edges"
SIDECAR_SUFFIX = ".meta.json"
