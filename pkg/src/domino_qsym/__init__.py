"""Signed arc permutations, domino tableaux and type B quasisymmetric functions."""

from .arc import (arc_to_domino, classify, domino_to_arc, enumerate_signed_arc,
                  is_signed_arc, is_signed_arc_by_patterns, phi1, phi2)
from .core import (BiTableau, DomainError, Domino, DominoTableau, SignedPermutation,
                   YoungTableau, domino_shapes, enumerate_partitions,
                   enumerate_semistandard_tableaux, enumerate_signed_permutations,
                   enumerate_standard_tableaux, is_empty_two_core, parse_shape,
                   parse_signed_permutation, quotient_to_shape, two_quotient)
from .correspondences import bi_rs, littlewood, littlewood_inverse, phi3, phi3_table, rs_insert
from .descents import des_b, des_r, des_r_bitableau, des_sdt, des_syt, sdes, sdes_bitableau, wdes
from .qsym import (QPoly, chow_f, decompose_lambda_b, domino_function, fundamental_f,
                   g_in_sb, lr_coefficient, poirier_f, qsym_of_set, schur, type_b_schur)
from .render import render
from .verify import IDENTITIES, run

__all__ = [name for name in dir() if not name.startswith("_")]
