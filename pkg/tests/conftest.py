import sys
from pathlib import Path

# so that `import oracles` works regardless of invocation directory
sys.path.insert(0, str(Path(__file__).resolve().parent))
