# -*- coding: utf-8 -*-
"""
Isolamento de ambiente para a suite de testes.

Os módulos leem MONOCHROME_* e SENTRY_DSN do ambiente (e o main.py chama
`load_dotenv()`, que nunca sobrescreve uma variável já definida). Fixamos
aqui valores neutros ANTES de qualquer import, para que um .env local com
teto de trabalho baixo, fuso diferente ou DSN de produção não mude o
resultado dos testes.
"""
import os
import sys

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
if ROOT not in sys.path:
    sys.path.insert(0, ROOT)

os.environ["MONOCHROME_BUDGET"] = "5000000"
os.environ["MONOCHROME_JOBS"] = "1"
os.environ["MONOCHROME_TZ"] = "America/Sao_Paulo"
os.environ.setdefault("MONOCHROME_LOG_LEVEL", "WARNING")
os.environ["SENTRY_DSN"] = ""

import pytest  # noqa: E402

from services.prng import SplitMix64  # noqa: E402
from services.ring_core import RingKind, RingSpec  # noqa: E402

Z = RingSpec(RingKind.INTEGERS)
ZI = RingSpec(RingKind.GAUSSIAN)
GF2 = RingSpec(RingKind.POLY, 2)
GF3 = RingSpec(RingKind.POLY, 3)

ALL_RINGS = [Z, ZI, GF2, GF3]


@pytest.fixture
def rng():
    return SplitMix64(20240611)


@pytest.fixture(params=ALL_RINGS, ids=str)
def spec(request):
    return request.param
