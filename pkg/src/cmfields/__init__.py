"""CM-type versus TR-type classification of totally imaginary number fields."""

__version__ = "0.1.0"
