#include "cli/cli.hpp"

int main(int argc, char** argv) { return cesent::cli::main_entry(argc, argv); }
