from .presentations import (
    PRESENTATION_NAMES,
    CHECKED_PRESENTATIONS,
    build_presentation,
)
from .bundles import BUNDLE_NAMES, DERIVED_NAMES, build_bundle, derived_diagram
from .morphisms import MORPHISM_NAMES, build_morphism
from .registry import verify_all
