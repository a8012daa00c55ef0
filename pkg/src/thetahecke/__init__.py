"""Exact Iwahori-Hecke bimodule computations for the theta correspondence
of the dual pair (GL_n, GL_m), with a finite-field oracle."""

from .bimodule import ThetaElem, act_left, act_right
from .hecke import HeckeElem, he_mul, standard
from .ring import LaurentPoly
from .weyl import OrbitIndex, WeylElem
