"""
配置管理模块
管理排名运行的默认设置、配置文件的保存和加载以及权重文件
"""

import datetime
import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Optional, Sequence, Union

from ahp.ranking import CriteriaWeights, PriorityMethod
from ahp.saaty import SAATY_MAPPINGS
from models.constants import DEFAULT_CONFIG_FILE, EIGEN_MAX_ITERATIONS, EIGEN_TOLERANCE
from models.errors import ConfigError
from models.quality import Quality

logger = logging.getLogger(__name__)


class ConfigManager:
    """配置管理器"""

    def __init__(self, config_path: Optional[Union[str, Path]] = None):
        """
        初始化配置管理器

        Args:
            config_path: 配置文件路径，默认为当前目录下的 ahp_config.json
        """
        self.config_file = Path(config_path) if config_path else Path(DEFAULT_CONFIG_FILE)

        # 默认配置
        self.default_config = {
            "method": "column",
            "weights": "equal",
            "strict": True,
            "png": False,
            "eigen_tol": EIGEN_TOLERANCE,
            "eigen_max_iter": EIGEN_MAX_ITERATIONS,
            "saaty_mapping": "difference",
            "workers": 1,
        }

        self.config = self.load_config()

    def load_config(self) -> Dict[str, Any]:
        """加载配置文件，缺少的配置项取默认值"""
        try:
            if self.config_file.exists():
                with open(self.config_file, "r", encoding="utf-8") as f:
                    loaded = json.load(f)
                if not isinstance(loaded, dict):
                    raise ValueError("top level must be an object")
                unknown = sorted(set(loaded) - set(self.default_config))
                if unknown:
                    logger.warning("ignoring unknown config keys in %s: %s", self.config_file, unknown)
                config = self.default_config.copy()
                config.update({k: v for k, v in loaded.items() if k in self.default_config})
                return config
            return self.default_config.copy()
        except (OSError, ValueError) as e:
            logger.warning("could not load config file %s (%s); using defaults", self.config_file, e)
            return self.default_config.copy()

    def save_config(self) -> bool:
        """保存配置文件"""
        try:
            with open(self.config_file, "w", encoding="utf-8") as f:
                json.dump(self.config, f, ensure_ascii=False, indent=2)
                f.write("\n")
            return True
        except OSError as e:
            logger.warning("could not save config file %s: %s", self.config_file, e)
            return False

    def get(self, key: str) -> Any:
        """获取单个配置项"""
        return self.config.get(key, self.default_config.get(key))


@dataclass(frozen=True)
class RunConfig:
    """一次 rank 运行的完整设置，取值优先级为命令行 > 配置文件 > 默认值"""

    grades_path: Path
    output_dir: Path
    records_path: Optional[Path] = None
    weights: str = "equal"
    method: str = "column"
    reference_date: Optional[datetime.date] = None
    strict: bool = True
    png: bool = False
    eigen_tol: float = EIGEN_TOLERANCE
    eigen_max_iter: int = EIGEN_MAX_ITERATIONS
    saaty_mapping: str = "difference"
    workers: int = 1

    def __post_init__(self):
        PriorityMethod.from_flag(self.method)
        if self.saaty_mapping not in SAATY_MAPPINGS:
            raise ConfigError(f"unknown saaty mapping {self.saaty_mapping!r}, expected one of {sorted(SAATY_MAPPINGS)}")
        if isinstance(self.eigen_tol, bool) or not isinstance(self.eigen_tol, (int, float)) or not self.eigen_tol > 0:
            raise ConfigError(f"eigen_tol must be a positive number, got {self.eigen_tol!r}")
        if isinstance(self.eigen_max_iter, bool) or not isinstance(self.eigen_max_iter, int) or self.eigen_max_iter < 1:
            raise ConfigError(f"eigen_max_iter must be a positive integer, got {self.eigen_max_iter!r}")
        if isinstance(self.workers, bool) or not isinstance(self.workers, int) or self.workers < 1:
            raise ConfigError(f"workers must be a positive integer, got {self.workers!r}")

    @property
    def priority_method(self) -> PriorityMethod:
        return PriorityMethod.from_flag(self.method)

    @classmethod
    def from_sources(cls, flags: Dict[str, Any], manager: ConfigManager) -> "RunConfig":
        """
        合并命令行参数与配置文件

        Args:
            flags (dict): 命令行取值，None 表示未指定
            manager (ConfigManager): 已加载的配置

        Returns:
            RunConfig: 合并后的设置
        """
        def pick(key: str):
            value = flags.get(key)
            return manager.get(key) if value is None else value

        records = flags.get("records_path")
        return cls(
            grades_path=Path(flags["grades_path"]),
            output_dir=Path(flags["output_dir"]),
            records_path=Path(records) if records else None,
            weights=str(pick("weights")),
            method=pick("method"),
            reference_date=flags.get("reference_date"),
            strict=bool(pick("strict")),
            png=bool(pick("png")),
            eigen_tol=pick("eigen_tol"),
            eigen_max_iter=pick("eigen_max_iter"),
            saaty_mapping=pick("saaty_mapping"),
            workers=pick("workers"),
        )


def load_weights(source: str, qualities: Sequence[Quality]) -> CriteriaWeights:
    """
    读取质量属性权重

    Args:
        source (str): "equal" 或权重 JSON 文件路径
        qualities: 参与排名的质量属性

    Returns:
        CriteriaWeights: 权重

    Raises:
        ConfigError: 文件内容不是 质量属性 -> 非负数 的映射
        OSError: 文件无法读取
    """
    if source == "equal":
        return CriteriaWeights.equal(qualities)
    with open(source, "r", encoding="utf-8") as f:
        try:
            raw = json.load(f)
        except json.JSONDecodeError as e:
            raise ConfigError(f"weights file {source} is not valid JSON: {e}") from None
    if not isinstance(raw, dict):
        raise ConfigError(f"weights file {source} must hold a JSON object")
    return CriteriaWeights.from_raw(raw, qualities)
