from src.models.representation import Kind, Representation

__all__ = ["Kind", "Representation"]
