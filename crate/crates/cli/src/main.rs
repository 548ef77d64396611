fn main() { println!("wip"); }
