import os
from dotenv import load_dotenv

load_dotenv()


APP_NAME = os.getenv("APP_NAME", "unitonlab")
VERSION = os.getenv("VERSION", "0.1.0")
LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")
LOG_DIR = os.getenv("LOG_DIR", "logs")
LOG_JSON = True if os.getenv("LOG_JSON", "False") == "True" else False
LOG_CONSOLE = True if os.getenv("LOG_CONSOLE", "True") == "True" else False
LOG_FILE = True if os.getenv("LOG_FILE", "False") == "True" else False
LOG_MAX_FILE_SIZE = int(os.getenv("LOG_MAX_FILE_SIZE_MB", "10")) * 1024 * 1024
LOG_BACKUP_COUNT = int(os.getenv("LOG_BACKUP_COUNT", "5"))

# numeric layer
NUMERIC_TOLERANCE = float(os.getenv("UNITON_TOLERANCE", "1e-9"))
PIVOT_TOLERANCE = float(os.getenv("UNITON_PIVOT_TOLERANCE", "1e-8"))
ORTHONORMAL_TOLERANCE = float(os.getenv("UNITON_ORTHONORMAL_TOLERANCE", "1e-12"))
LAMBDA_SAMPLES = int(os.getenv("UNITON_LAMBDA_SAMPLES", "8"))

# residue oracle
RESIDUE_DPS = int(os.getenv("UNITON_RESIDUE_DPS", "50"))
RESIDUE_THRESHOLD = float(os.getenv("UNITON_RESIDUE_THRESHOLD", "1e-30"))

DEFAULT_SEED = int(os.getenv("UNITON_DEFAULT_SEED", "0"))
