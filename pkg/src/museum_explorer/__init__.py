"""Museum collection explorer: harvest, catalog, visualize.

The pipeline runs in three stages, each producing inspectable JSON:

1. harvest  -- fetch portal pages per a blueprint, extract raw fields
2. build    -- normalize raw records into a four-dimension catalog
3. serve / export -- compute network / treemap / sunburst / polygon
   geometry and expose it over HTTP (or as a static bundle)
"""

__version__ = "0.1.0"
