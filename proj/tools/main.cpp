#include "cli.hpp"

int main(int argc, char** argv) { return bernbound::cli::run(argc, argv); }
