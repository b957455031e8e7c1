import os

from dotenv import load_dotenv

load_dotenv()

LOG_LEVEL = os.getenv("QBINOMIAL_LOG_LEVEL", "WARNING")
LOG_FILE = os.getenv("QBINOMIAL_LOG_FILE")
LOG_FORMAT = "Log: [{extra[run_id]}:{time} - {level} - {message}]"

CHECK_WORKERS = int(os.getenv("QBINOMIAL_CHECK_WORKERS", "4"))

# Показатели степени - знаковые 64-битные; выход за диапазон - ошибка, а не переполнение по модулю.
EXPONENT_LIMIT = 2**63 - 1

# Порядок усечения для q-биномиальной теоремы с отрицательной степенью: max(QBINNEG_MIN_ORDER, n + QBINNEG_ORDER_SLACK).
QBINNEG_MIN_ORDER = 12
QBINNEG_ORDER_SLACK = 4

# Сколько значений [n, k] держит кэш оракула.
ORACLE_CACHE_SIZE = 4096
