"""
SSA Codes
Secondary-structure avoiding DNA codes: verification, constructions and codecs
"""

__version__ = "1.0.0"
__description__ = "Constructions and codecs for m-SSA DNA codes"
