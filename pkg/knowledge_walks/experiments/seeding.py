"""
Вывод зёрен реализаций.

Зерно зависит только от базового зерна, канонического ключа точки сетки и
номера реализации, поэтому не меняется при перестановке осей сетки и не
зависит от числа процессов.
"""

from hashlib import blake2b

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
NETWORK_SALT = 0x6E6574776F726B73


def mix64(value: int) -> int:
    """Финализатор SplitMix64."""
    z = (value + GOLDEN_GAMMA) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def key_hash(key: str) -> int:
    return int.from_bytes(blake2b(key.encode(), digest_size=8).digest(), "little")


def realization_seed(base_seed: int, point_key: str, realization: int) -> int:
    return mix64(mix64(mix64(base_seed & MASK64) ^ key_hash(point_key)) ^ realization)


def network_seed(spec_seed: int, realization: int) -> int:
    """Зерно сети для реализации при пересоздании сети; общее для всех точек сетки."""
    return mix64(mix64((spec_seed ^ NETWORK_SALT) & MASK64) ^ realization)
