from seqcyclic.actions.build_vector import BuildVectorAction
from seqcyclic.actions.criterion_action import CriterionAction
from seqcyclic.actions.criterion_callable import CriterionCallable
