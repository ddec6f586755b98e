from django.conf import settings

DEFAULT_MAX_RANK = 12
DEFAULT_SAMPLE_LIMIT = 4096


def max_rank_cap() -> int:
    return int(getattr(settings, "HOMSPACE_MAX_RANK", DEFAULT_MAX_RANK))


def sample_limit() -> int:
    return int(getattr(settings, "HOMSPACE_SAMPLE_LIMIT", DEFAULT_SAMPLE_LIMIT))


def sample_seed() -> int:
    return int(getattr(settings, "HOMSPACE_SAMPLE_SEED", 0))
