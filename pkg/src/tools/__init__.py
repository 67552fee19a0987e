from .base_tool import BaseTool
from .bott_tool import BottTool
from .class_tool import ClassTool
from .compute_tool import ComputeTool
from .verify_tool import VerifyTool

TOOLS = (ComputeTool, VerifyTool, BottTool, ClassTool)

__all__ = ['BaseTool', 'BottTool', 'ClassTool', 'ComputeTool', 'VerifyTool', 'TOOLS']
