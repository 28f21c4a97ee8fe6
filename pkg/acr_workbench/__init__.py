"""Exact verification workbench for ACR-GNNs, graded modal logic and bisimulation."""
from acr_workbench.workflows.verify_workflow import VerificationWorkflow

__all__ = ["VerificationWorkflow"]
