from .report import FORMATS, VerificationReport, emit_report, format_text

__all__ = ['FORMATS', 'VerificationReport', 'emit_report', 'format_text']
