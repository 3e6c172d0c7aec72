# config/__init__.py
"""
Configuração do projeto orthostraight.

Os valores vêm de variáveis de ambiente ou de um arquivo .env
(python-decouple); veja config/settings.py.
"""
