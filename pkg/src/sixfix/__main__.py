from sixfix.cli import main

main()
