"""q,t-Narayana polynomials of parallelogram polyominoes."""

from .bijections import digamma, digamma_inverse, transpose_flip
from .dyck import DyckPath, PolyominoDyckPath, dtp, dyck_to_area_word, ptd, word_to_polyomino
from .parking import ParkingFunction, TwoLetterPF, enumerate_park, para_poly, peel, reduce_two_letter
from .polyomino import (
    AreaWord,
    AreaWordError,
    BouncePath,
    Letter,
    Polyomino,
    area,
    area_word,
    bounce,
    bounce_path,
    dinv,
    enumerate_polyominoes,
    from_paths,
    nara_enum,
    narayana_count,
    tilde_nara_enum,
)
from .qtpoly import QTPolynomial, q_binomial, q_factorial, q_integer
from .recursion import RecursionSession, nabla_pairing, nara_rs, nara_total, para_rs_rec, tilde_nara_rs, word_peel

__version__ = "0.1.0"
