from .human_readable import HumanReadable
from .markdown import Markdown

__all__ = ['HumanReadable', 'Markdown']
