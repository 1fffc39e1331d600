from almostbalanced.cli import main

main()
