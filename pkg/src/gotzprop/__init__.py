"""gotzprop: Macaulay representations, monomial shadows and Gotzmann persistence"""

__version__ = '1.0.0'
