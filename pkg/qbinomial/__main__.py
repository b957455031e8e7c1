from qbinomial.main import cli


cli(prog_name="qbinomial")
