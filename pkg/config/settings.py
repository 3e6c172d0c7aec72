from decouple import config


# Coeficientes
# q | zhalf | f<p>
DEFAULT_COEFF = config('BIDET_COEFF', default='q')


# Endireitamento
STRAIGHTEN_MAX_TERMS = config('BIDET_MAX_TERMS', default=50000, cast=int)
STRAIGHTEN_FUEL = config('BIDET_FUEL', default=500000, cast=int)


# Oráculo de pontos do grupo
ORACLE_SEED = config('BIDET_SEED', default=2024, cast=int)
ORACLE_POINTS = config('BIDET_POINTS', default=10, cast=int)
ORACLE_ENTRY_RANGE = config('BIDET_ENTRY_RANGE', default=3, cast=int)
ORACLE_MAX_RETRIES = config('BIDET_MAX_RETRIES', default=64, cast=int)
ORACLE_WIDEN_ATTEMPTS = config('BIDET_WIDEN_ATTEMPTS', default=3, cast=int)


# Suíte de base
BASIS_SUITE_CAP = config('BIDET_BASIS_CAP', default=600, cast=int)
BASIS_POINT_MARGIN = config('BIDET_POINT_MARGIN', default=8, cast=int)
BASIS_SPANNING_SAMPLES = config('BIDET_SPANNING_SAMPLES', default=4, cast=int)


# Logging
LOG_LEVEL = config('LOG_LEVEL', default='WARNING')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {asctime} {module} {process:d} {thread:d} {message}',
            'style': '{',
        },
        'simple': {
            'format': '{levelname} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'level': 'DEBUG',
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
            'stream': 'ext://sys.stderr',
        },
    },
    'root': {
        'handlers': ['console'],
        'level': 'WARNING',
    },
    'loggers': {
        'apps': {
            'handlers': ['console'],
            'level': LOG_LEVEL,
            'propagate': False,
        },
    },
}
