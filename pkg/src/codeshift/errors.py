"""Exception hierarchy.

Every error carries an ``exit_code`` so the CLI can map it without a lookup
table: 3 for validation failures (the input is well formed but cannot
satisfy the request) and 4 for data failures (the input itself is broken).
"""

from __future__ import annotations


class CodeShiftError(Exception):
    exit_code = 1

    def to_dict(self) -> dict:
        return {"error": type(self).__name__, "message": str(self)}


class ValidationError(CodeShiftError):
    exit_code = 3


class DataError(CodeShiftError):
    exit_code = 4


# corpus
class MissingFile(DataError):
    pass


class InvalidEncoding(DataError):
    pass


class DuplicateId(ValidationError):
    pass


class EmptyTask(ValidationError):
    pass


class EmptySource(DataError):
    pass


class SchemaError(DataError):
    pass


# lexer / cst
class LexError(DataError):
    def __init__(self, line: int, col: int, reason: str):
        super().__init__(f"{reason} at line {line}, column {col}")
        self.line = line
        self.col = col
        self.reason = reason

    def to_dict(self) -> dict:
        d = super().to_dict()
        d.update(line=self.line, col=self.col, reason=self.reason)
        return d


class UnsupportedLanguage(DataError):
    pass


class UnknownToken(ValidationError):
    pass


class ParseError(DataError):
    def __init__(self, position: int, reason: str):
        super().__init__(f"{reason} at token {position}")
        self.position = position
        self.reason = reason


class SExprSyntaxError(DataError):
    pass


class EmptyTree(DataError):
    pass


class TooFewFiles(ValidationError):
    pass


# splitgen
class InsufficientFiles(ValidationError):
    def __init__(self, task_id: str, detail: str = ""):
        msg = f"task {task_id!r} has too few files"
        super().__init__(f"{msg}: {detail}" if detail else msg)
        self.task_id = task_id


class InsufficientTasks(ValidationError):
    pass


class InsufficientProgrammers(ValidationError):
    def __init__(self, task_id: str, detail: str = ""):
        msg = f"task {task_id!r} has too few programmers"
        super().__init__(f"{msg}: {detail}" if detail else msg)
        self.task_id = task_id


class MissingTimestamps(ValidationError):
    pass


class HistogramMismatch(ValidationError):
    pass


class MatrixMismatch(ValidationError):
    pass


class ConfigError(ValidationError):
    pass


# refmodel
class EmptyTraining(ValidationError):
    pass


class DegenerateLabels(ValidationError):
    pass


class NonFinite(ValidationError):
    pass


class EmptyOutliers(ValidationError):
    pass


class DimensionMismatch(DataError):
    pass


# detect / eval
class NonFiniteLogits(DataError):
    pass


class NonPositiveTemperature(ValidationError):
    pass


class SingularCovariance(ValidationError):
    pass


class ClassTooSmall(ValidationError):
    pass


class MissingRecord(DataError):
    def __init__(self, file_id: str):
        super().__init__(f"no record for file {file_id!r}")
        self.file_id = file_id


class KeyMismatch(ValidationError):
    pass


class EmptyInput(ValidationError):
    pass


class OneClassOnly(ValidationError):
    pass
