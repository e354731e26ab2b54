from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """Application configuration loaded from environment variables.

    Attributes:
        DEFAULT_PRIME: Characteristic of the default prime field.
        DEFAULT_FIELD: ``fp`` or ``qq``.
        SEED: Seed of the random points used by exactness checks.
        MAX_STEPS: Homological step bound for minimal resolutions.
        OUTPUT_FORMAT: ``json`` or ``text``.
        WORKERS: Size of the verification process pool; 0 means one per CPU.
        RANK_POINTS: Number of random points per exactness check.
        MAX_COMPLEX_RANK: Largest total rank of a recipe complex built in full.
        QQ_SPOT_CHECKS: Comma-separated entries re-run over the rationals in the core suite.
        SHUFFLE_KEYS: Comma-separated entries whose Gröbner basis is recomputed under
            shuffled generator orders.
        SHUFFLES: Generator orders tried per shuffled entry.
        PREFIX_DEGREE: Last degree of the Hilbert function checked against the series.
        CATALOG_PATH: Catalog data file; empty means the packaged copy.
        WEYL_TABLES_PATH: Weight-table data file; empty means the packaged copy.
        LOG_LEVEL: Level of the stderr log handler.
    """

    DEFAULT_PRIME: int = 32003
    DEFAULT_FIELD: str = "fp"
    SEED: int = 20201
    MAX_STEPS: int = 8
    OUTPUT_FORMAT: str = "json"
    WORKERS: int = 0
    RANK_POINTS: int = 3
    MAX_COMPLEX_RANK: int = 4096
    QQ_SPOT_CHECKS: str = "E6/I26,E6/I23,E6/I14,E7/J55,E7/J16"
    SHUFFLE_KEYS: str = (
        "E6/I26,E6/I25,E6/I24,E6/I23,E6/I22,E6/I21,E6/I20,E6/I19,E6/I18,E6/I17"
    )
    SHUFFLES: int = 20
    PREFIX_DEGREE: int = 3

    # Data files
    CATALOG_PATH: str = ""
    WEYL_TABLES_PATH: str = ""

    LOG_LEVEL: str = "WARNING"

    model_config = {"env_file": ".env", "extra": "ignore"}


settings = Settings()
