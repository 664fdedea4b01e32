from stcutlib.cli import main

raise SystemExit(main())
