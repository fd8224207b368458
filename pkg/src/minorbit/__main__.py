from minorbit.cli import main

raise SystemExit(main())
