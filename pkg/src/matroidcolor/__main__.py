from matroidcolor.cli import entrypoint

entrypoint()
