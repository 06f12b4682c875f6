from concordia.core import report, dbar_table  # noqa: F401
from concordia.types import Config  # noqa: F401
from concordia.cover import parse, branched_double_cover  # noqa: F401
from concordia.obstruct import ObstructionReport  # noqa: F401
