"""Independent checks for the classifier."""
from .census import Census, census
from .scan import ScanReport, assert_impossible, exhaustive_family_scan
from .verify import OrderMismatch, TrivialMate, verify_mate

__all__ = ["Census", "OrderMismatch", "ScanReport", "TrivialMate", "assert_impossible",
           "census", "exhaustive_family_scan", "verify_mate"]
