"""Workflow orchestration for the verification workbench."""

from acr_workbench.workflows.verify_workflow import VerificationWorkflow

__all__ = ["VerificationWorkflow"]
