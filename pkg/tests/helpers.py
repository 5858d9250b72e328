import random

from ssa_codes.utils.dna import DnaSeq


def random_dna(rng: random.Random, length: int) -> DnaSeq:
    return DnaSeq("".join(rng.choice("ATCG") for _ in range(length)))
