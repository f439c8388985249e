import os

# coefficient of a power of q that no capped product reaches
UNREACHABLE = -1

# largest truncation M + 1 a table may hold
MAX_TABLE_ENTRIES = int(os.environ.get("FROBENIUS_MAX_TABLE_ENTRIES", 20_000_000))
