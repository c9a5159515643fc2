"""Resource caps for the search procedures, overridable via environment."""

import os
from dataclasses import dataclass, field, fields


@dataclass(frozen=True)
class ResourceCaps:
    max_tets: int = 48            # largest triangulation fed to enumeration
    max_rays: int = 80000         # intermediate double-description rays
    max_surfaces: int = 6000      # enumerated vertex surfaces per run
    max_oracle_nodes: int = 4000000
    max_simplify_states: int = 3000
    max_disc_tets: int = 44       # cut pieces fed to the disc search
    max_moves: int = 100000       # raw rewriting moves per simplification

    @classmethod
    def from_env(cls, **overrides):
        values = {}
        for f in fields(cls):
            env = os.environ.get("GRAPHROOTS_" + f.name.upper())
            if env is not None:
                values[f.name] = int(env)
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)


class ResourceCapError(RuntimeError):
    """A configured resource cap was exceeded."""


DEFAULT_CAPS = ResourceCaps()
