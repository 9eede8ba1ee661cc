"""One entry point for every identity checker in the package."""

from __future__ import annotations

import inspect

from .hermite import hermite_identity_tags, verify_hermite_identity
from .motzkin import motzkin_identity_tags, verify_motzkin_identity
from .report import UnknownIdentityError, VerificationReport
from .telephone import telephone_identity_tags, verify_telephone_identity

__all__ = ["IDENTITY_TAGS", "verify_identity", "verify_all"]

_VERIFIERS = {}
for _tags, _fn in (
    (hermite_identity_tags(), verify_hermite_identity),
    (motzkin_identity_tags(), verify_motzkin_identity),
    (telephone_identity_tags(), verify_telephone_identity),
):
    for _tag in _tags:
        _VERIFIERS[_tag] = _fn

IDENTITY_TAGS: tuple[str, ...] = tuple(_VERIFIERS)


def verify_identity(tag: str, **ranges) -> VerificationReport:
    """Run one identity; range keywords the checker does not take are ignored.

    ``None`` values are dropped so callers can pass optional CLI flags through.
    """
    fn = _VERIFIERS.get(tag.upper())
    if fn is None:
        raise UnknownIdentityError(tag)
    accepted = inspect.signature(fn).parameters
    kwargs = {k: v for k, v in ranges.items() if v is not None and k in accepted}
    return fn(tag, **kwargs)


def verify_all(**ranges) -> list[VerificationReport]:
    return [verify_identity(tag, **ranges) for tag in IDENTITY_TAGS]
