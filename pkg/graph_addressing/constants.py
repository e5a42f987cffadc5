GRAPH_ADDRESSING_CONFIG = "GRAPH_ADDRESSING_CONFIG"
GRAPH_ADDRESSING_MAX_VERTICES = "GRAPH_ADDRESSING_MAX_VERTICES"
GRAPH_ADDRESSING_NODE_BUDGET = "GRAPH_ADDRESSING_NODE_BUDGET"
GRAPH_ADDRESSING_TIME_BUDGET = "GRAPH_ADDRESSING_TIME_BUDGET"

DEFAULT_CONFIG_FILE = "addressing.yml"
DEFAULT_MAX_VERTICES = 5000

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3
