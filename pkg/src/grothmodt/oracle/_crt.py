from typing import List, Optional, Sequence, Tuple

from sympy.ntheory.modular import solve_congruence

from grothmodt.core import CrtError


def crt_reconstruct(residues: Sequence[Tuple[int, int]], bound: int) -> Optional[int]:
    """
    Finds the integer n with |n| <= bound that matches all residues. The moduli do not
    need to be coprime.

    :param residues: the (modulus, residue) pairs
    :type residues: Sequence
    :param bound: the bound on |n|
    :type bound: int
    :return: the integer, None if no integer within the bound matches
    :rtype: int
    :raises CrtError: if the residues are inconsistent or several integers match
    """
    if len(residues) == 0:
        raise CrtError("No residues to reconstruct from")
    for modulus, _ in residues:
        if modulus < 1:
            raise CrtError("Invalid modulus: %d" % modulus)
    solution = solve_congruence(*[(r % m, m) for m, r in residues])
    if solution is None:
        raise CrtError("Inconsistent residues: %s" % ", ".join("%d mod %d" % (r, m) for m, r in residues))
    residue, modulus = int(solution[0]), int(solution[1])
    candidates = candidates_within(residue, modulus, bound)
    if len(candidates) > 1:
        raise CrtError("Ambiguous reconstruction modulo %d within bound %d: %s"
                       % (modulus, bound, ", ".join(str(c) for c in candidates)))
    if len(candidates) == 0:
        return None
    return candidates[0]


def candidates_within(residue: int, modulus: int, bound: int) -> List[int]:
    """
    All n with n = residue (mod modulus) and |n| <= bound, ascending.
    """
    start = -bound + ((residue + bound) % modulus)
    return list(range(start, bound + 1, modulus))
