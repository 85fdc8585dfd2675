import os
from pathlib import Path

from dotenv import load_dotenv

from loader import load_json5

load_dotenv(dotenv_path=Path(__file__).parent / '.env')

# ── Structural constants (not user-tunable) ────────────────────────────────────
MODEL_LABELS = ['natural', 'natural-dual', 'y-alt', 'x-std', 'x-alt', 'x-alt-dual']

# Fibration labels driven by (a, b, c, d); the rest are driven by J or (α..ζ).
MODULI_MODELS = ('natural', 'natural-dual')
J_MODELS      = ('y-alt',)
PARAM_MODELS  = ('x-std', 'x-alt', 'x-alt-dual')

J_WEIGHTS      = (2, 3, 4, 5, 6)
IGUSA_WEIGHTS  = (1, 2, 3, 5)

# K3 degree bounds for (f, g, Δ) in the short Weierstrass form
K3_BOUNDS = (8, 12, 24)

PASS  = 'pass'
FAIL  = 'fail'
ERROR = 'error'

# ── Tunable defaults (loaded from data/defaults.json5) ─────────────────────────
_DATA = Path(__file__).parent / 'data'
_d = load_json5(_DATA / 'defaults.json5')

SCHEMA  = _d['SCHEMA']
SEED    = int(os.environ.get('SIXLINES_SEED', _d['SEED']))
SAMPLES = int(os.environ.get('SIXLINES_SAMPLES', _d['SAMPLES']))

RELATION_SAMPLES    = _d['RELATION_SAMPLES']
CLOSED_FORM_SAMPLES = _d['CLOSED_FORM_SAMPLES']
DISC_S_SAMPLES      = _d['DISC_S_SAMPLES']
RES_AB_SAMPLES      = _d['RES_AB_SAMPLES']
MODULI_SAMPLES      = _d['MODULI_SAMPLES']
QUARTIC_SAMPLES     = _d['QUARTIC_SAMPLES']
RESTRICTION_SAMPLES = _d['RESTRICTION_SAMPLES']
PERMUTATION_CONFIGS = _d['PERMUTATION_CONFIGS']

HEIGHT    = _d['HEIGHT']
LOG_LEVEL = os.environ.get('SIXLINES_LOG_LEVEL', _d['LOG_LEVEL']).upper()

CLOSED_FORMS = load_json5(_DATA / 'closed_forms.json5')
