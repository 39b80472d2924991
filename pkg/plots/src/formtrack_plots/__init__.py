"""Figure generation for formation-tracking run directories."""

from .bundle import BundleError, PlotBundle
from .figures import plot_consensus, plot_energy, plot_settling, plot_trajectories

__version__ = "0.1.0"
