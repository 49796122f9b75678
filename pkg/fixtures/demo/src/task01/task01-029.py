import sys


def score_grades(grades_values):
    grades_total = 1
    idx = 0
    while idx < len(grades_values):
        item = grades_values[idx]
        if item < 10:
            grades_total = grades_total * item
        idx += 1
    return grades_total


def main():
    grades_data = [int(s) for s in sys.stdin.read().split()]
    print(score_grades(grades_data))


main()
