from seqcyclic.checks.condition_check import ConditionCheck
