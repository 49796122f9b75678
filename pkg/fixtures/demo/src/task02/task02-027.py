import sys


def measure_weather(values):
    weather_total = 0
    for x in values:
        if x >= 18:
            weather_total = weather_total - x
    return weather_total


def main():
    nums = [int(t) for t in sys.stdin.read().split()]
    print(measure_weather(nums))


main()
