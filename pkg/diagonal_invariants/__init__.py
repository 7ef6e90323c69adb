from .base import (
    ComputationTooLargeException,
    DISettings,
    GuardViolationException,
    NonIntegralResultException,
    NotACharacterException,
    RingMismatchException,
    UnsupportedSizeException,
    get_settings,
)

__all__: list[str] = [
    "ComputationTooLargeException",
    "DISettings",
    "GuardViolationException",
    "NonIntegralResultException",
    "NotACharacterException",
    "RingMismatchException",
    "UnsupportedSizeException",
    "get_settings",
]
