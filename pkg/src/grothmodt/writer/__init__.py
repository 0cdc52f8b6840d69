from ._base import Writer, Report
from ._json import JsonWriter
from ._text import TextWriter
