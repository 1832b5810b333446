"""The correspondence between Weyl-group classes and unipotent classes.

For the general linear group both sides are labeled by partitions (cycle
types on one side, Jordan types on the other) and the correspondence phi is
the identity on labels.  For the symplectic group Sp_2n a class C of signed
permutations is sent through the symmetric group on 2n letters: phi(C) is
the unipotent class whose Jordan type equals the cycle type of (any
representative of) C under that embedding.

Two combinatorial maps into partitions of 2n make this precise:
* map_i: class of W(C_n) -> cycle type of an embedded representative;
* map_j: unipotent class of Sp_2n -> its Jordan type in GL_2n (injective,
  with image exactly the symplectic partitions).
phi for the symplectic family is characterized by map_j(phi(C)) = map_i(C);
the two images coincide, and map_i is computed by the literal embedding with
a runtime check that the result really is symplectic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import IntegrityError
from .partitions import Partition, is_symplectic_partition, partitions_of
from .weyl import DEFAULT_RANK_CAP, ConjugacyClass, GroupSpec, conjugacy_classes

GROUP_FAMILIES = ("GL", "Sp")


@dataclass(frozen=True)
class UnipotentClassLabel:
    """A unipotent conjugacy class, labeled by group family and Jordan type."""

    group_family: str
    jordan_type: Partition

    def __post_init__(self):
        if self.group_family not in GROUP_FAMILIES:
            raise ValueError(f"unknown group family {self.group_family!r}")
        if self.group_family == "Sp":
            if self.jordan_type.size % 2:
                raise ValueError("Sp Jordan types partition an even number")
            if not is_symplectic_partition(self.jordan_type):
                raise ValueError(f"{self.jordan_type} has an odd part of odd multiplicity")

    def __str__(self):
        return f"{self.group_family}{self.jordan_type}"


def map_i(cls: ConjugacyClass) -> Partition:
    """Cycle type in S_2n of a representative of a W(C_n)-class.

    Computed by the literal embedding; being constant on the class is a
    tested property, not an assumption baked in here.
    """
    if cls.spec.family != "BC":
        raise ValueError("map_i is defined on hyperoctahedral classes")
    return cls.representative.embed_in_symmetric().cycle_type()


def map_j(label: UnipotentClassLabel) -> Partition:
    """Jordan type of a symplectic unipotent class inside GL_2n: the
    embedding preserves Jordan types, so this is the identity on the label."""
    if label.group_family != "Sp":
        raise ValueError("map_j is defined on symplectic unipotent classes")
    return label.jordan_type


def map_j_image(n: int) -> set[Partition]:
    """All symplectic partitions of 2n: the Jordan types realized in Sp_2n."""
    return {p for p in partitions_of(2 * n) if is_symplectic_partition(p)}


def phi(cls: ConjugacyClass) -> UnipotentClassLabel:
    """The unipotent class attached to a Weyl-group class.

    Family A: the cycle type itself, as a GL Jordan type.  Family BC: the
    symplectic class with Jordan type map_i(cls); if that cycle type ever
    failed to be a symplectic partition the correspondence itself would be
    falsified, so that is an integrity failure, never silently corrected.
    """
    family = cls.spec.family
    if family == "A":
        return UnipotentClassLabel("GL", cls.label)
    if family == "BC":
        cycle_type = map_i(cls)
        if not is_symplectic_partition(cycle_type):
            raise IntegrityError(
                f"embedded cycle type {cycle_type} of class {cls.label} is not symplectic"
            )
        return UnipotentClassLabel("Sp", cycle_type)
    raise ValueError("phi is implemented for families A and BC only")


@dataclass(frozen=True)
class PhiRow:
    """One line of the tabulated correspondence."""

    cls: ConjugacyClass
    image: UnipotentClassLabel | None

    def to_json(self):
        return {
            "class_label": self.cls.label_json(),
            "size": self.cls.size,
            "d_C": self.cls.min_length,
            "elliptic": self.cls.elliptic,
            "phi": self.image.jordan_type.to_json() if self.image else None,
        }


def phi_table(spec: GroupSpec, rank_cap: int = DEFAULT_RANK_CAP, with_phi: bool = True) -> list[PhiRow]:
    """All classes of the group with sizes, minimal lengths, elliptic flags
    and (families A and BC) the attached unipotent classes."""
    if with_phi and spec.family == "D":
        raise ValueError("the class-to-unipotent map is out of scope for family D")
    rows = []
    for cls in conjugacy_classes(spec, rank_cap=rank_cap):
        rows.append(PhiRow(cls, phi(cls) if with_phi else None))
    return rows
