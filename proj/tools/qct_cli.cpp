/*
 * qct_cli.cpp
 * -----------
 * Command-line front end (subcommands wired up as modules land).
 */
#include <cstdio>

int main() {
    std::puts("qct: no subcommands wired yet");
    return 0;
}
