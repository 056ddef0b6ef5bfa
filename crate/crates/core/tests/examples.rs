macro_rules! example {
    ($name:ident) => {
        mod $name {
            include!(concat!(
                env!("CARGO_MANIFEST_DIR"),
                "/examples/",
                stringify!($name),
                ".rs"
            ));
        }

        #[test]
        fn $name() {
            $name::run_example().unwrap();
        }
    };
}

example!(approximations);
example!(covering_io);
example!(exhaustive_sweep);
example!(induced_matroid);
example!(random_sweep);
example!(reduct);
example!(subfamily_audit);
example!(upper_closure);
