import os
from dotenv import load_dotenv

load_dotenv()

class Config:
    # Точный перебор (exact oracle)
    EXACT_ARC_CAP = int(os.getenv('SBSS_EXACT_CAP', '22'))  # 22 дуги ≈ 4M подмножеств в худшем случае

    # Алгоритм 1: корень по умолчанию (метка 1..n, как в файлах)
    DEFAULT_ROOT = int(os.getenv('SBSS_DEFAULT_ROOT', '1'))

    # Пакетный режим stats
    STATS_WORKERS = int(os.getenv('SBSS_STATS_WORKERS', '4'))

    # Генераторы
    DEFAULT_SEED = int(os.getenv('SBSS_DEFAULT_SEED', '1'))

    # Логирование
    LOG_LEVEL = os.getenv('SBSS_LOG_LEVEL', 'WARNING')

    # Эталонный граф figure1 (13 вершин, 16 дуг)
    FIGURE1_PATH = os.getenv(
        'SBSS_FIGURE1_PATH',
        os.path.join(os.path.dirname(os.path.abspath(__file__)), 'data', 'figure1.txt')
    )

    # Оформление DOT
    DOT_HIGHLIGHT = 'color=red, penwidth=2'

    # Эмодзи для логов
    EMOJIS = {
        'ok': '✅',
        'fail': '❌',
        'warning': '⚠️',
        'search': '🔍',
        'tree': '🌳',
        'link': '🔗',
        'stats': '📈',
        'file': '📄',
    }
