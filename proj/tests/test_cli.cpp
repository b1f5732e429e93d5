// populated alongside the command-line tool
