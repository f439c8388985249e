import os

# Desk-scale budget: largest table (n, or the DP bound of frobenius_dp) an oracle will build
ORACLE_LIMIT = int(os.environ.get("FROBENIUS_ORACLE_LIMIT", 100_000))
