from .geom.triple import *
from .geom.incidence import *
from .geom.start import *
from .engine.configuration import *
from .engine.closure import *
from .oracles.sumset import *
from .oracles.grid import *
from .oracles.incidence_bound import *
from .bounds.stage_bounds import *
from .bounds.degree_lemma import *
from .bounds.envelope import *
from .bounds.bootstrap import *
from .bounds.report import *
from .snapshot.snapshot_generator import *
from .snapshot.reader import *
from .svg.svg_generator import *
