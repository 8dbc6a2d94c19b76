from csalab import counterexample_run
from csalab.cli import render_text

def show_counterexample(p1, p2, level):
    report = counterexample_run(p1, p2, level)
    print(render_text(report.to_dict()))
    return report


if __name__ == '__main__':
    report = show_counterexample(2, 3, 2)

    if report.contradiction:
        print('no common division algebra over the 3-tower')

