"""让测试像 main.py 一样直接导入顶层包"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))
