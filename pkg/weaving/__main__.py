from weaving.main import run

run()
