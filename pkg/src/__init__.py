# MutVis
