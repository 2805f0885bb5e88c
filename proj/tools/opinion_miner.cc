#include "opinion_miner/cli.h"

int main(int argc, char **argv) { return opinion_miner::run_cli(argc, argv); }
