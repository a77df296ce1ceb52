from enum import Enum
from fractions import Fraction
from typing import Dict, List

from pydantic import BaseModel, ConfigDict, computed_field


class FormulaName(str, Enum):
    """Независимые способы вычисления a_k"""

    RECURRENCE = "recurrence"
    COMTET = "comtet"
    BRASSESCO_MENDEZ = "brassesco_mendez"
    THEOREM1 = "theorem1"
    COROLLARY = "corollary"
    POTENTIAL = "potential"

    @classmethod
    def parse(cls, name: str) -> "FormulaName":
        """Разбирает имя формулы, включая короткий псевдоним bm"""
        normalized = name.strip().lower()
        if normalized == "bm":
            return cls.BRASSESCO_MENDEZ
        return cls(normalized)


REFERENCE_FORMULA = FormulaName.RECURRENCE


class CoeffReport(BaseModel):
    """Значения a_k по всем формулам и вердикт об их совпадении"""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    k: int
    values: Dict[FormulaName, Fraction]

    @computed_field
    @property
    def agree(self) -> bool:
        return len(set(self.values.values())) <= 1

    @property
    def reference(self) -> Fraction:
        """Значение по рекуррентности (эталон)"""
        return self.values[REFERENCE_FORMULA]

    def disagreeing(self) -> List[FormulaName]:
        """Формулы, значения которых отличаются от эталона"""
        if REFERENCE_FORMULA not in self.values:
            return []
        return [
            name for name, value in self.values.items() if value != self.reference
        ]
