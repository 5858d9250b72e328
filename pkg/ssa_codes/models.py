from pydantic import BaseModel, Field, field_validator, model_validator
from typing import List, Optional, Tuple
from enum import Enum
from math import ceil

from ssa_codes.utils.dna import DnaSeq, DnaSymbol
# block compatibility is imported inside the validator to avoid a circular import
# (services.block_code builds BlockSet instances)


class FrozenModel(BaseModel):
    class Config:
        arbitrary_types_allowed = True
        frozen = True


# ============================================
# SSA oracle
# ============================================

class RcPairWitness(FrozenModel):
    p: int = Field(..., ge=0, description="start of the first window")
    q: int = Field(..., ge=0, description="start of the second window")
    length: int = Field(..., ge=1, description="window (stem) length in nt")

    @model_validator(mode="after")
    def check_non_overlapping(self):
        if self.p + self.length > self.q:
            raise ValueError("windows overlap or are out of order")
        return self

    def holds_in(self, x: DnaSeq) -> bool:
        """True if the witness really marks a reverse-complement pair of ``x``"""
        from ssa_codes.utils.dna import revcomp

        if self.q + self.length > len(x):
            return False
        return x[self.p:self.p + self.length] == revcomp(x[self.q:self.q + self.length])


class AntiRcSet(FrozenModel):
    m: int = Field(..., ge=1, description="word length")
    members: Tuple[DnaSeq, ...] = Field(default_factory=tuple)

    @property
    def size(self) -> int:
        return len(self.members)

    @model_validator(mode="after")
    def check_anti_rc(self):
        from ssa_codes.utils.dna import revcomp

        member_set = set(self.members)
        if len(member_set) != len(self.members):
            raise ValueError("duplicate members")
        for word in self.members:
            if len(word) != self.m:
                raise ValueError(f"member {word} is not of length {self.m}")
            if revcomp(word) in member_set:
                raise ValueError(f"{word} and its reverse complement are both members")
        if 2 * len(self.members) > 4 ** self.m:
            raise ValueError("an anti-RC set holds at most 4^m / 2 words")
        return self


class CapacityBound(FrozenModel):
    m: int = Field(..., ge=1)
    set_size: int = Field(..., ge=1, description="size of the maximum anti-RC set")
    bound: float = Field(..., description="(1/m) log2 |S_m| in bits/nt")
    trivial_bound: float = Field(..., description="(1/m) log2 (4^m / 2) in bits/nt")


# ============================================
# Block concatenation
# ============================================

class BlockMethod(str, Enum):
    EXACT = "exact"
    GREEDY = "greedy"
    FIXED = "fixed"


class BlockSet(FrozenModel):
    m: int = Field(..., ge=1, description="block length in nt")
    t: int = Field(..., ge=1, description="compatibility window, ceil(m/3)")
    blocks: Tuple[DnaSeq, ...] = Field(..., min_length=1)
    method: BlockMethod

    @property
    def size(self) -> int:
        return len(self.blocks)

    @model_validator(mode="after")
    def check_block_set(self):
        if self.t != ceil(self.m / 3):
            raise ValueError(f"t must be ceil(m/3) = {ceil(self.m / 3)}, got {self.t}")
        for block in self.blocks:
            if len(block) != self.m:
                raise ValueError(f"block {block} is not of length {self.m}")
        if len(set(self.blocks)) != len(self.blocks):
            raise ValueError("blocks must be distinct")

        # fixed codebooks carry their own guarantee and their own order
        if self.method is BlockMethod.FIXED:
            return self

        if any(a >= b for a, b in zip(self.blocks, self.blocks[1:])):
            raise ValueError("blocks must be in strictly increasing lexicographic order")

        from ssa_codes.services.block_code import blocks_compatible

        for i, x1 in enumerate(self.blocks):
            for x2 in self.blocks[i:]:
                if not blocks_compatible(x1, x2, self.t):
                    raise ValueError(f"blocks {x1} and {x2} are not compatible at t={self.t}")
        return self


# ============================================
# Symbol-composition codes
# ============================================

class CountTable(FrozenModel):
    m: int = Field(..., ge=1, description="window length")
    counts: Tuple[int, ...] = Field(..., description="counts[i] = number of codewords of length i")
    completions: Tuple[Tuple[int, ...], ...] = Field(
        ..., description="completions[r][l] = continuations of length l after a non-A run r"
    )

    @property
    def n_max(self) -> int:
        return len(self.counts) - 1

    @model_validator(mode="after")
    def check_table_shape(self):
        if len(self.completions) != self.m:
            raise ValueError("one completion row per trailing-run state 0..m-1")
        for row in self.completions:
            if len(row) != len(self.counts):
                raise ValueError("completion rows must cover the same lengths as counts")
            if row[0] != 1:
                raise ValueError("the empty continuation is always valid")
        for i in range(min(self.m, len(self.counts))):
            if self.counts[i] != 3 ** i:
                raise ValueError(f"counts[{i}] must equal 3^{i}")
        for n in range(self.m, len(self.counts)):
            expected = sum(2 ** j * self.counts[n - j - 1] for j in range(self.m))
            if self.counts[n] != expected:
                raise ValueError(f"counts[{n}] breaks the counting recurrence")
        if self.completions[0] != self.counts:
            raise ValueError("completions after an empty run must equal counts")
        return self


class CharRoot(FrozenModel):
    m: int = Field(..., ge=2)
    lam: float = Field(..., description="largest real root of the characteristic polynomial")
    rate: float = Field(..., description="log2(lambda) in bits/nt")
    residual: float = Field(
        ..., ge=0, description="|p(lambda)| relative to the sum of its absolute terms"
    )

    @field_validator("lam")
    @classmethod
    def validate_lam(cls, v: float) -> float:
        if not 2.0 - 1e-9 <= v < 3.0:
            raise ValueError(f"root {v} outside [2, 3)")
        return v


# ============================================
# Sequence replacement codec
# ============================================

class CodecParams(FrozenModel):
    n: int = Field(..., gt=16, description="codeword length, a power of 4")
    p: int = Field(..., ge=3, description="log_4 n, width of every pointer index")
    mprime: int = Field(..., description="scan threshold 3p + 2")
    m_guarantee: int = Field(..., description="guaranteed stem bound 6p + 4")

    @model_validator(mode="after")
    def check_consistency(self):
        if self.n != 4 ** self.p:
            raise ValueError(f"n = {self.n} is not 4^{self.p}")
        if self.mprime != 3 * self.p + 2:
            raise ValueError("mprime must equal 3p + 2")
        if self.m_guarantee != 2 * self.mprime:
            raise ValueError("m_guarantee must equal 2 * mprime")
        return self

    @property
    def type_one_pointer_length(self) -> int:
        return 1 + 3 * self.p

    @property
    def type_two_pointer_length(self) -> int:
        return 3 + 2 * self.p

    @property
    def message_length(self) -> int:
        return self.n - 1


class TriggerKind(str, Enum):
    RC_PAIR = "rc_pair"
    RUN = "run"
    NONE = "none"


class Trigger(FrozenModel):
    kind: TriggerKind
    i: Optional[int] = Field(None, ge=0, description="start of y (pair) or of the run")
    j: Optional[int] = Field(None, ge=0, description="end of y (pair) or of the run, inclusive")
    k: Optional[int] = Field(None, ge=0, description="start of z (pair only)")
    a: Optional[DnaSymbol] = None
    b: Optional[DnaSymbol] = None

    @model_validator(mode="after")
    def check_fields(self):
        if self.kind is TriggerKind.RC_PAIR:
            if None in (self.i, self.j, self.k):
                raise ValueError("a pair trigger needs i, j and k")
            if not self.i <= self.j < self.k:
                raise ValueError("pair trigger requires i <= j < k")
        elif self.kind is TriggerKind.RUN:
            if None in (self.i, self.j, self.a, self.b):
                raise ValueError("a run trigger needs i, j, a and b")
            if self.j < self.i or (self.j - self.i + 1) % 2:
                raise ValueError("run trigger must span an even number of symbols")
        return self


NO_TRIGGER = Trigger(kind=TriggerKind.NONE)


class ReplacementStep(FrozenModel):
    trigger: Trigger
    length_before: int = Field(..., ge=0)
    length_after: int = Field(..., ge=0)


class EncodeReport(FrozenModel):
    codeword: DnaSeq
    steps: List[ReplacementStep] = Field(default_factory=list)
    core_length: int = Field(..., ge=0, description="length before the (AC)* suffix is appended")
    suffix_length: int = Field(..., ge=0, description="codeword length minus core length")

    @property
    def prepend_only(self) -> bool:
        return not self.steps
