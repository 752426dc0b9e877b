"""Outcome of an edge-apex membership test."""

from __future__ import annotations

import enum
from dataclasses import dataclass


class ApexStatus(enum.Enum):
    MEMBER = "member"
    APEX = "apex"
    NOT_IN_APEX = "non-member"


@dataclass(frozen=True)
class ApexResult:
    status: ApexStatus
    edge: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.status is not ApexStatus.NOT_IN_APEX

    def describe(self) -> str:
        if self.status is ApexStatus.APEX:
            return f"apex {self.edge[0]} {self.edge[1]}"
        return self.status.value


MEMBER = ApexResult(ApexStatus.MEMBER)
NOT_IN_APEX = ApexResult(ApexStatus.NOT_IN_APEX)


def apex_edge(u: int, v: int) -> ApexResult:
    return ApexResult(ApexStatus.APEX, (u, v))
