"""Report and group exporters."""
