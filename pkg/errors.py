"""
Исключения SBSS Toolkit

Все ошибки библиотеки наследуются от SbssError:
CLI превращает их в код выхода 1 с диагностикой.
"""

from typing import Optional


class SbssError(Exception):
    """Базовая ошибка библиотеки"""


class InvalidGraphError(SbssError):
    """Некорректные данные при построении графа (петля, вершина вне диапазона)"""


class ContractError(SbssError):
    """Нарушен контракт: подмножество от другого графа, сломано постусловие"""


class PreconditionError(SbssError):
    """Не выполнено предусловие операции"""


class NotStronglyBiconnectedError(PreconditionError):
    """Граф не сильно двусвязен"""

    def __init__(self, reason: str):
        super().__init__(f"input is not strongly biconnected: {reason}")
        self.reason = reason


class UnreachableVertexError(PreconditionError):
    """Остовное дерево не покрывает все вершины"""

    def __init__(self, vertex: int, root: int, direction: str):
        # В сообщении метки 1..n
        if direction == 'out':
            text = f"vertex {vertex + 1} is unreachable from root {root + 1}"
        else:
            text = f"vertex {vertex + 1} cannot reach root {root + 1}"
        super().__init__(text)
        self.vertex = vertex
        self.root = root


class DisconnectedGraphError(SbssError):
    """Неориентированный граф несвязен, блоки не определены"""


class InstanceTooLargeError(SbssError):
    """Экземпляр больше лимита точного перебора"""

    def __init__(self, size: int, cap: int, what: str = 'arcs'):
        super().__init__(f"instance too large for exact solver: {size} {what} > cap {cap}")
        self.size = size
        self.cap = cap


class ParseError(SbssError):
    """Ошибка разбора файла со списком дуг"""

    def __init__(self, message: str, line: Optional[int] = None):
        text = f"line {line}: {message}" if line is not None else message
        super().__init__(text)
        self.line = line


class GeneratorError(SbssError):
    """Недопустимые параметры генератора"""
