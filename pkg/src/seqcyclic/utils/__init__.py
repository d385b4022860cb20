from seqcyclic.utils.numbers import format_number, to_json_number
from seqcyclic.utils.statistics import describe, percentile_linear
