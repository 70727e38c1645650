#include "lamis/cli.hpp"

int main(int argc, char** argv) { return lamis::run_cli(argc, argv); }
