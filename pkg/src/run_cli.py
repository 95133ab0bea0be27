import os
import sys
import logging

from dotenv import load_dotenv

load_dotenv()

# Configure logging with environment variable control and validation
log_level = os.getenv("LOG_LEVEL", "INFO").upper()

valid_levels = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
if log_level not in valid_levels:
    print(f"Warning: Invalid LOG_LEVEL '{log_level}'. Using INFO instead.", file=sys.stderr)
    print(f"Valid levels: {', '.join(valid_levels)}", file=sys.stderr)
    log_level = "INFO"

logging.basicConfig(
    level=getattr(logging, log_level),
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
)

# sympy is chatty at DEBUG
logging.getLogger("sympy").setLevel(logging.WARNING)

if log_level == "DEBUG":
    logging.debug("DEBUG logging enabled - enumeration levels and candidate sets are traced")

if __name__ == "__main__":
    from semicovers.cli import main

    sys.exit(main())
