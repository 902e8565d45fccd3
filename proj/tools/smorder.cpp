#include "smorder/cli.hpp"

int main(int argc, char** argv) { return smorder::run_cli(argc, argv); }
