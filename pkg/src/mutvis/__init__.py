"""
MutVis - взаимная видимость в гиперкубах, CCC и бабочках
"""

__version__ = "1.0.0"
__author__ = "MutVis Team"
