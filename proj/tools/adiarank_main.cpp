#include "adiarank/cli.hpp"

int main(int argc, char** argv) { return adiarank::run_cli(argc, argv); }
