from dataclasses import dataclass, field
from typing import List, Optional, Tuple, Union


@dataclass(frozen=True)
class ClassModT:
    """
    A class modulo T: either a known integer residue or unknown with a reason.
    """
    value: Optional[int] = None
    reason: Optional[str] = None

    @staticmethod
    def known(value: int) -> 'ClassModT':
        return ClassModT(value=int(value))

    @staticmethod
    def unknown(reason: str) -> 'ClassModT':
        return ClassModT(reason=reason)

    @property
    def is_known(self) -> bool:
        return self.value is not None

    def to_json(self) -> Union[int, str]:
        return self.value if self.is_known else "unknown"

    def __str__(self):
        return str(self.value) if self.is_known else "unknown"


@dataclass
class TraceNode:
    """
    Records the rule that produced a class. For known results the arithmetic replays as
    result = constant + sum(coefficient * child).
    """
    target: str
    key: Tuple
    description: str
    rule: str
    result: ClassModT
    constant: int = 0
    children: List['TraceNode'] = field(default_factory=list)
    coefficients: List[int] = field(default_factory=list)
    note: str = None

    def add_child(self, child: 'TraceNode', coefficient: int = 1):
        self.children.append(child)
        self.coefficients.append(coefficient)

    def replay(self) -> Optional[int]:
        """
        Recomputes the value from the children, recursively.

        :return: the value, None if unknown
        :rtype: int
        """
        if not self.result.is_known:
            return None
        if len(self.children) == 0:
            return self.constant
        total = self.constant
        for c, child in zip(self.coefficients, self.children):
            value = child.replay()
            if value is None:
                return None
            total += c * value
        return total

    def size(self) -> int:
        return 1 + sum(c.size() for c in self.children)

    def to_dict(self) -> dict:
        result = {
            "target": self.target,
            "matroid": self.description,
            "rule": self.rule,
            "result": self.result.to_json(),
        }
        if not self.result.is_known:
            result["reason"] = self.result.reason
        if self.constant != 0:
            result["constant"] = self.constant
        if self.note is not None:
            result["note"] = self.note
        if len(self.children) > 0:
            result["children"] = [{"coefficient": c, "node": n.to_dict()} for c, n in zip(self.coefficients, self.children)]
        return result
