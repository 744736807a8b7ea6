"""bistellar_cluster - бистеллярные ходы, матрицы обмена и кластерные алгебры триангуляций."""

__version__ = "0.1.0"
